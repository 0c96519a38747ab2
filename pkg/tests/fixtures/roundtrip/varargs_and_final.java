public class VarargsAndFinal {
    int total(final int base, int... extras) {
        int t = base;
        for (final int e : extras) {
            t += e;
        }
        return t;
    }
}
