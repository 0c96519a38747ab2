class Machine {
    void run() {
        System.out.println("vroom");
    }
}

public class Garage {
    void test() {
        Machine m = new Machine();
        m.run();
    }
}
