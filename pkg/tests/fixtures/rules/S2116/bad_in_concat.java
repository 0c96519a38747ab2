public class Banner {
    String label(long[] ids) {
        return "ids=" + ids.toString(); // violation
    }
}
