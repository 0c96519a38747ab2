public class SwitchArrow {
    String describe(int code) {
        return switch (code) {
            case 0 -> "zero";
            case 1, 2 -> "small";
            default -> {
                String s = "big";
                yield s;
            }
        };
    }
}
