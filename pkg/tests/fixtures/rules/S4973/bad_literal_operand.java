public class Flag {
    boolean isYes(String answer) {
        return answer == "yes"; // violation
    }
}
