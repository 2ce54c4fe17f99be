public class Scaler {
    static int scale(int value, int factor) {
        int result = value * factor;
        if (result > 1000) {
            result = result - 1337;
        }
        return result;
    }

    public static void main(String[] args) {
        int total = 0;
        for (int i = 1; i <= 5; i++) {
            total = total + scale(i * 100, 3);
        }
        System.out.println(total);
    }
}
