public class Cache {
    private final Object lock = new Object();

    void refresh() {
        synchronized (lock) {
            System.out.println("refreshing");
        }
    }
}
