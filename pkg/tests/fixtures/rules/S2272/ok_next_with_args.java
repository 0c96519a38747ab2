import java.util.Iterator;
import java.util.NoSuchElementException;

public class Paged implements Iterator<String> {
    public boolean hasNext() {
        return false;
    }

    public String next() {
        throw new NoSuchElementException();
    }

    public String next(int skip) {
        return "skipped " + skip;
    }
}
