import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class GenericsNested {
    Map<String, List<Map<Integer, String>>> index = new HashMap<>();

    <T extends Comparable<? super T>> T max(List<? extends T> items) {
        T best = items.get(0);
        for (T item : items) {
            if (item.compareTo(best) > 0) {
                best = item;
            }
        }
        return best;
    }
}
