public class QualifiedNamesDeep {
    long now() {
        return java.lang.System.currentTimeMillis();
    }

    java.util.List<java.lang.String> empty() {
        return java.util.Collections.emptyList();
    }
}
