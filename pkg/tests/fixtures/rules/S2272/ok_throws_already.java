import java.util.Iterator;
import java.util.NoSuchElementException;

public class Strict implements Iterator<String> {
    private int i;

    public boolean hasNext() {
        return i < 3;
    }

    public String next() {
        if (!hasNext()) {
            throw new NoSuchElementException();
        }
        i++;
        return "x";
    }
}
