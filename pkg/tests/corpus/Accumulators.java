public class Accumulators {
    static int failures = 0;
    static long total = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static void record(int v) {
        total = total + v;
    }

    static int digitSum(int n) {
        int s = 0;
        n = Math.abs(n);
        while (n > 0) {
            s = s + n % 10;
            n = n / 10;
        }
        return s;
    }

    static int polynomial(int x) {
        int a = 3;
        int b = -2;
        int c = 7;
        int value = a * x * x + b * x + c;
        value = value - x;
        value = x * value;
        return value;
    }

    public static void main(String[] args) {
        int product = 1;
        int sum = 0;
        int diff = 1000;
        for (int i = 1; i <= 10; i++) {
            product = product * 2;
            sum = sum + i;
            diff = diff - i;
            record(i);
        }
        check(product == 1024 && sum == 55 && diff == 945, "loop accumulators");
        check(total == 55, "static total");
        check(digitSum(98765) == 35 && digitSum(-402) == 6, "digit sums");
        int p = 0;
        for (int x = -3; x <= 3; x++) {
            p = p + polynomial(x);
        }
        System.out.println(product + " " + sum + " " + diff + " " + total + " " + p);
        check(p == -84, "polynomial");
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
