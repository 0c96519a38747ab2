public class LoopsAll {
    int run(int n) {
        int total = 0;
        for (int i = 0, j = n; i < j; i++, j--) {
            total += i;
        }
        int k = 0;
        while (k < n) {
            k += 2;
        }
        do {
            k -= 1;
        } while (k > n);
        outer:
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                if (i * j > n) {
                    continue outer;
                }
                if (i + j == n) {
                    break outer;
                }
            }
        }
        return total + k;
    }
}
