public class Proper {
    boolean same(String a, String b) {
        return a.equals(b);
    }
}
