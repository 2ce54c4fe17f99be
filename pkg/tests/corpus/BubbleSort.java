public class BubbleSort {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static int sort(int[] a) {
        int swaps = 0;
        for (int i = 0; i < a.length - 1; i++) {
            boolean swapped = false;
            for (int j = 0; j < a.length - 1 - i; j++) {
                if (a[j] > a[j + 1]) {
                    int tmp = a[j];
                    a[j] = a[j + 1];
                    a[j + 1] = tmp;
                    swaps = swaps + 1;
                    swapped = true;
                }
            }
            if (!swapped) {
                break;
            }
        }
        return swaps;
    }

    static boolean sorted(int[] a) {
        for (int i = 1; i < a.length; i++) {
            if (a[i - 1] > a[i]) {
                return false;
            }
        }
        return true;
    }

    public static void main(String[] args) {
        int[] data = {5, 3, 9, -2, 7, 7, 0, 11, -8, 4};
        int swaps = sort(data);
        StringBuilder sb = new StringBuilder();
        for (int v : data) {
            sb.append(v).append(' ');
        }
        System.out.println(sb.toString().trim());
        System.out.println("swaps " + swaps);
        check(sorted(data), "sorted");
        check(data[0] == -8 && data[data.length - 1] == 11, "ends");
        check(swaps == 24, "swap count");
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
