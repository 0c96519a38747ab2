public class Entity {
    public String toString() {
        return null; // violation
    }
}
