public class Named {
    private String name = "x";

    public String toString() {
        return name;
    }
}
