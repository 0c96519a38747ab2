public class Mixed {
    boolean same(Integer a, int b) {
        return a == b;
    }
}
