public class BinarySearch {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static int search(int[] a, int key) {
        int lo = 0;
        int hi = a.length - 1;
        while (lo <= hi) {
            int mid = lo + (hi - lo) / 2;
            if (a[mid] < key) {
                lo = mid + 1;
            } else if (a[mid] > key) {
                hi = mid - 1;
            } else {
                return mid;
            }
        }
        return -(lo + 1);
    }

    static int lowerBound(int[] a, int key) {
        int lo = 0, hi = a.length;
        while (lo < hi) {
            int mid = (lo + hi) >>> 1;
            if (a[mid] < key) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        return lo;
    }

    public static void main(String[] args) {
        int[] a = new int[50];
        for (int i = 0; i < a.length; i++) {
            a[i] = i * 3 + 1;
        }
        for (int i = 0; i < a.length; i++) {
            check(search(a, a[i]) == i, "found " + i);
        }
        check(search(a, 0) == -1, "before");
        check(search(a, 3) == -2, "between");
        check(search(a, 1000) == -51, "after");
        check(lowerBound(a, 29) == 10, "lb");
        System.out.println("search 100 -> " + search(a, 100) + ", lb 50 -> " + lowerBound(a, 50));
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
