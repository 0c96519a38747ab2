import java.util.ArrayList;
import java.util.List;
import java.util.function.BiFunction;
import java.util.function.Function;
import java.util.function.Supplier;

public class LambdasAndRefs {
    Function<String, Integer> len = String::length;
    Supplier<List<String>> fresh = ArrayList::new;
    BiFunction<Integer, Integer, Integer> add = (a, b) -> a + b;
    Function<Integer, Integer> doubled = x -> {
        int y = x * 2;
        return y;
    };
    Runnable nop = () -> {
    };
}
