public class Counter {
    private final Integer gate = 0;

    void bump() {
        synchronized (gate) { // violation
            System.out.println("bump");
        }
    }
}
