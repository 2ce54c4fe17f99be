import java.util.Arrays;

public class Statistics {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static boolean close(double a, double b) {
        return Math.abs(a - b) < 1e-9;
    }

    static double mean(double[] xs) {
        double total = 0.0;
        for (double x : xs) {
            total = total + x;
        }
        return total / xs.length;
    }

    static double variance(double[] xs) {
        double m = mean(xs);
        double acc = 0;
        for (int i = 0; i < xs.length; i++) {
            double d = xs[i] - m;
            acc = acc + d * d;
        }
        return acc / (xs.length - 1);
    }

    static double median(double[] xs) {
        double[] c = xs.clone();
        Arrays.sort(c);
        int n = c.length;
        if (n % 2 == 1) {
            return c[n / 2];
        }
        return (c[n / 2 - 1] + c[n / 2]) / 2.0;
    }

    public static void main(String[] args) {
        double[] data = {2.5, 3.5, 1.0, 4.0, 6.5, 3.0};
        double m = mean(data);
        double v = variance(data);
        double sd = Math.sqrt(v);
        check(close(m, 3.4166666666666665), "mean");
        check(close(v, 3.341666666666667), "variance");
        check(close(sd * sd, v), "sd");
        check(close(median(data), 3.25), "median");
        System.out.println("mean*1000 " + Math.round(m * 1000));
        System.out.println("var*1000 " + Math.round(v * 1000));
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
