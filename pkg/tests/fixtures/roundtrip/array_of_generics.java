import java.util.List;
import java.util.Map;

public class ArrayOfGenerics {
    @SuppressWarnings("unchecked")
    List<String>[] buckets = new List[8];

    Map.Entry<String, Integer>[] entries() {
        return null; // not a toString/clone override, plain API choice
    }
}
