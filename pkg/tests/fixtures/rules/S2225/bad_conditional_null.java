public class Partial {
    private String name;

    public String toString() {
        if (name != null) {
            return name;
        }
        return null; // violation
    }
}
