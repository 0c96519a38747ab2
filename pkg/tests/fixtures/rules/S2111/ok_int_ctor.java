import java.math.BigDecimal;

public class Whole {
    BigDecimal five() {
        return new BigDecimal(5);
    }
}
