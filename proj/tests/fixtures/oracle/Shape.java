package oracle;

public class Shape {
    private double width;
    private double height;
    private String kind;

    public double area() {
        if ("circle".equals(kind)) {
            return Math.PI * width * width / 4;
        } else if ("triangle".equals(kind)) {
            return width * height / 2;
        } else if ("square".equals(kind)) {
            return width * width;
        }
        return width * height;
    }

    public String describe(boolean verbose) {
        return verbose ? (width > height ? "wide " + kind : "tall " + kind) : kind;
    }

    public boolean fits(double w, double h) {
        return w >= width && h >= height || w >= height && h >= width;
    }
}
