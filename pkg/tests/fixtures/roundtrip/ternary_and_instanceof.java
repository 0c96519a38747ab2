public class TernaryAndInstanceof {
    String kind(Object o) {
        return o instanceof String ? "text" : o instanceof Integer ? "number" : "other";
    }

    int safeLen(Object o) {
        if (o instanceof String) {
            String s = (String) o;
            return s.length();
        }
        return 0;
    }
}
