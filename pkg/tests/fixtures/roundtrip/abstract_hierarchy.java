public abstract class AbstractHierarchy {
    protected abstract int weight();

    public final int doubled() {
        return weight() * 2;
    }
}

class Heavy extends AbstractHierarchy {
    @Override
    protected int weight() {
        return 100;
    }
}
