import java.io.FileInputStream;
import java.io.IOException;

public class Careful {
    void read(String path) throws IOException {
        FileInputStream in = new FileInputStream(path);
        System.out.println(in.read());
        in.close();
    }
}
