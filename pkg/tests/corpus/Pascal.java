public class Pascal {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static long[][] triangle(int rows) {
        long[][] t = new long[rows][];
        for (int r = 0; r < rows; r++) {
            t[r] = new long[r + 1];
            t[r][0] = 1;
            t[r][r] = 1;
            for (int c = 1; c < r; c++) {
                t[r][c] = t[r - 1][c - 1] + t[r - 1][c];
            }
        }
        return t;
    }

    static long binom(int n, int k) {
        long result = 1;
        for (int i = 1; i <= k; i++) {
            result = result * (n - k + i) / i;
        }
        return result;
    }

    public static void main(String[] args) {
        int rows = 30;
        long[][] t = triangle(rows);
        for (int r = 0; r < rows; r++) {
            long rowSum = 0;
            for (int c = 0; c <= r; c++) {
                rowSum += t[r][c];
                check(t[r][c] == binom(r, c), "binom " + r + "," + c);
            }
            check(rowSum == 1L << r, "row sum " + r);
        }
        StringBuilder sb = new StringBuilder();
        for (long v : t[6]) {
            sb.append(v).append(" ");
        }
        System.out.println(sb.toString().trim());
        System.out.println("C(29,14) = " + t[29][14]);
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
