import java.math.BigDecimal;

public class Money {
    BigDecimal amount() {
        return new BigDecimal("2.5");
    }
}
