public class Audit {
    void log(byte[] payload) {
        System.out.println(payload.toString()); // violation
        System.out.println(payload.hashCode()); // violation
    }
}
