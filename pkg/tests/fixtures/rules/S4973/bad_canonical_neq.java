public class Cmp {
    boolean different(String a, String b) {
        return a != b; // violation
    }
}
