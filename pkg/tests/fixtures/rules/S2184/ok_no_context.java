public class Loose {
    void consume(int a, int b) {
        System.out.println(a * b);
    }
}
