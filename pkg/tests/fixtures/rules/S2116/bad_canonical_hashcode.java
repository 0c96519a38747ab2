public class Key {
    int of(String[] parts) {
        return parts.hashCode(); // violation
    }
}
