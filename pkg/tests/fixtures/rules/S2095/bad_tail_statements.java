import java.io.FileWriter;
import java.io.IOException;

public class Log {
    void write(String path, String message) throws IOException {
        FileWriter out = new FileWriter(path); // violation
        out.write(message);
        System.out.println("wrote");
    }
}
