class Race {
    void run(int laps) {
        System.out.println(laps);
    }
}

public class Track {
    void start(Race r) {
        r.run(3);
    }
}
