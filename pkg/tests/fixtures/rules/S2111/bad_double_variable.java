import java.math.BigDecimal;

public class Rate {
    BigDecimal of(double value) {
        return new BigDecimal(value); // violation
    }
}
