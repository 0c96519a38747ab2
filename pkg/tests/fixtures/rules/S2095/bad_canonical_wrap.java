import java.io.FileInputStream;
import java.io.IOException;

public class Reader {
    void read(String path) throws IOException {
        FileInputStream in = new FileInputStream(path); // violation
        int b = in.read();
        System.out.println(b);
    }
}
