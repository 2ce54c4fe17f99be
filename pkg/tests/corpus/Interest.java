public class Interest {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static double compound(double principal, double rate, int years, int periods) {
        double amount = principal;
        double perPeriod = rate / periods;
        for (int i = 0; i < years * periods; i++) {
            amount = amount * (1 + perPeriod);
        }
        return amount;
    }

    static float halve(float f) {
        return f / 2.0f;
    }

    static double average(int[] xs) {
        int total = 0;
        for (int x : xs) {
            total = total + x;
        }
        return (double) total / xs.length;
    }

    public static void main(String[] args) {
        double a = compound(1000.0, 0.05, 10, 12);
        check(Math.abs(a - 1647.00949769028) < 1e-6, "compound");
        double b = compound(500.0, 0.1, 3, 1);
        check(Math.abs(b - 665.5) < 1e-9, "annual");
        float h = halve(7.0f);
        check(Math.abs(h - 3.5f) < 1e-6, "halve");
        check(Math.abs(average(new int[]{1, 2, 3, 4}) - 2.5) < 1e-12, "average");
        double ratio = 7 / 2;
        check(ratio == 3.0, "int division");
        double real = 7 / 2.0;
        check(Math.abs(real - 3.5) < 1e-12, "real division");
        double scaled = a - 1000.0;
        System.out.println("growth cents " + Math.round(scaled * 100));
        System.out.println("annual cents " + Math.round(b * 100));
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
