import java.math.BigDecimal;

public class Tiny {
    BigDecimal half() {
        return new BigDecimal(0.5f); // violation
    }
}
