public record RecordPoint(int x, int y) {
    public RecordPoint {
        if (x < 0 || y < 0) {
            throw new IllegalArgumentException("negative");
        }
    }

    double norm() {
        return Math.sqrt((double) x * x + (double) y * y);
    }
}
