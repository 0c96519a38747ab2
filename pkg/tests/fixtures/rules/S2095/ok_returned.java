import java.io.FileInputStream;
import java.io.FileNotFoundException;

public class Factory {
    FileInputStream open(String path) throws FileNotFoundException {
        return new FileInputStream(path);
    }
}
