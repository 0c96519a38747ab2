class BaseThing {
    int size;

    BaseThing(int size) {
        this.size = size;
    }

    int size() {
        return size;
    }
}

public class ThisSuperCalls extends BaseThing {
    ThisSuperCalls() {
        this(4);
    }

    ThisSuperCalls(int size) {
        super(size);
    }

    @Override
    int size() {
        return super.size() + 1;
    }
}
