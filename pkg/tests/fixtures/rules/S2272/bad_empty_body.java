import java.util.Iterator;

public class Stub implements Iterator<String> {
    public boolean hasNext() {
        return false;
    }

    public String next() { // violation
    }
}
