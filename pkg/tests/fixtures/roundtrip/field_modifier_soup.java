public class FieldModifierSoup {
    public static final transient int CACHE = 1;
    protected volatile long stamp;
    private static int counter;
    int packagePrivate;
    public strictfp double compute() {
        return stamp * 0.5;
    }
}
