public class OneShot {
    void fire(Runnable task) {
        new Thread(task).run(); // violation
    }
}
