public class Clock {
    long millisPerDay() {
        long ms = 24 * 60 * 60 * 1000; // violation
        return ms;
    }
}
