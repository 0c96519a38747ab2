class Worker extends Thread {
    public void run() {
        System.out.println("working");
    }
}

public class Launch {
    void go() {
        Worker w = new Worker();
        w.run(); // violation
    }
}
