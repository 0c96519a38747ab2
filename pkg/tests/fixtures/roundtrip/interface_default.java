public interface InterfaceDefault {
    int size();

    default boolean isEmpty() {
        return size() == 0;
    }

    static InterfaceDefault empty() {
        return () -> 0;
    }
}
