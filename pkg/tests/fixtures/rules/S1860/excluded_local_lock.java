public class Scratch {
    void work() {
        String guard = "local";
        synchronized (guard) { // violation
            System.out.println("working");
        }
    }
}
