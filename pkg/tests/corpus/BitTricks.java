public class BitTricks {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static int popcount(int x) {
        int c = 0;
        while (x != 0) {
            x = x & (x - 1);
            c++;
        }
        return c;
    }

    static int reverseBits(int x) {
        int r = 0;
        for (int i = 0; i < 32; i++) {
            r = (r << 1) | (x & 1);
            x = x >>> 1;
        }
        return r;
    }

    static boolean isPowerOfTwo(long v) {
        return v > 0 && (v & (v - 1)) == 0;
    }

    public static void main(String[] args) {
        int[] samples = {0, 1, 7, 255, -1, 0x12345678, Integer.MIN_VALUE};
        for (int s : samples) {
            int p = popcount(s);
            check(p == Integer.bitCount(s), "popcount " + s);
            System.out.println(s + " bits=" + p + " rev=" + reverseBits(s) + " shr=" + (s >> 3) + " ushr=" + (s >>> 28));
        }
        check(reverseBits(1) == Integer.MIN_VALUE, "rev1");
        check(isPowerOfTwo(1L << 40), "pow2");
        check(!isPowerOfTwo(12), "not pow2");
        int mask = 0;
        for (int i = 0; i < 8; i += 2) {
            mask = mask | (1 << i);
        }
        check(mask == 85, "mask");
        check((mask ^ 0xFF) == 170, "xor");
        check(~mask == -86, "not");
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
