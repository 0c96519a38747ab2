public class Plain {
    int square(int x) {
        int sq = x * x;
        return sq;
    }
}
