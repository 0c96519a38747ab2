import java.util.Iterator;
import java.util.NoSuchElementException;

public class IteratorProper implements Iterator<Integer> {
    private final int limit;
    private int next;

    public IteratorProper(int limit) {
        this.limit = limit;
    }

    @Override
    public boolean hasNext() {
        return next < limit;
    }

    @Override
    public Integer next() {
        if (!hasNext()) {
            throw new NoSuchElementException();
        }
        return next++;
    }
}
