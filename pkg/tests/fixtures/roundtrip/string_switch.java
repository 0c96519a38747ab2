public class StringSwitch {
    int code(String color) {
        switch (color) {
            case "red":
                return 0xFF0000;
            case "green":
                return 0x00FF00;
            default:
                return 0;
        }
    }
}
