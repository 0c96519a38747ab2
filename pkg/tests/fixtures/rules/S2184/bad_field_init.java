public class Limits {
    static final long CACHE_BYTES = 8 * 1024 * 1024; // violation
}
