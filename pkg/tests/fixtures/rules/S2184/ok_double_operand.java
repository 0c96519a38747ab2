public class Ratio {
    double half(int x) {
        double h = x / 2.0;
        return h;
    }
}
