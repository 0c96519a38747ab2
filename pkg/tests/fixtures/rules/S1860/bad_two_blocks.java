public class Pair {
    private final String first = "a";
    private final Long second = 2L;

    void one() {
        synchronized (first) { // violation
            System.out.println(1);
        }
    }

    void two() {
        synchronized (second) { // violation
            System.out.println(2);
        }
    }
}
