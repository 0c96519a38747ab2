import java.math.BigDecimal;

public class Tenth {
    BigDecimal tenth() {
        BigDecimal value = new BigDecimal(0.1d); // violation
        return value;
    }
}
