public class SynchronizedProper {
    private final Object lock = new Object();
    private int hits;

    synchronized void bump() {
        hits++;
    }

    void bumpTwice() {
        synchronized (lock) {
            hits += 2;
        }
    }
}
