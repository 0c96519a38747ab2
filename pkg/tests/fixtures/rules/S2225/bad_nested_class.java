public class Outer {
    static class Inner {
        public String toString() {
            return null; // violation
        }
    }
}
