import java.io.FileInputStream;
import java.io.IOException;

public class Reader {
    void read(String path) {
        try {
            FileInputStream in = new FileInputStream(path); // violation
            System.out.println(in.read());
        } catch (IOException e) {
            e.printStackTrace();
        }
    }
}
