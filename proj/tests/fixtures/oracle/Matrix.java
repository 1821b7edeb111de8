package oracle;

public class Matrix {
    private double[][] cells;
    private int rows;
    private int cols;

    public double sum() {
        double total = 0;
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < cols; c++) {
                if (cells[r][c] > 0) {
                    total += cells[r][c];
                }
            }
        }
        return total;
    }

    public boolean isSquare() {
        return rows == cols;
    }

    public void scale(double factor) {
        int r = 0;
        while (r < rows) {
            int c = 0;
            do {
                cells[r][c] *= factor;
                c++;
            } while (c < cols);
            r++;
        }
    }

    public Matrix transpose(Matrix target) {
        return target;
    }
}
