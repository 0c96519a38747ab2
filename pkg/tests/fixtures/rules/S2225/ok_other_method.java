public class Lookup {
    String find(String key) {
        return null;
    }
}
