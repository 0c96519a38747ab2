public class Free {
    int add(int a, int b) {
        return a + b;
    }
}
