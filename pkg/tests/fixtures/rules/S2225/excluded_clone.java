public class Shy {
    public Object clone() {
        return null; // violation
    }
}
