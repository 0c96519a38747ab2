public class Quiet {
    void nap() {
        try {
            Thread.sleep(50);
        } catch (InterruptedException ignored) { // violation
        }
    }
}
