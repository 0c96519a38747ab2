import java.io.IOException;

public class TryCatchFinally {
    int risky() {
        try {
            return System.in.read();
        } catch (IOException e) {
            return -1;
        } finally {
            System.out.println("after");
        }
    }
}
