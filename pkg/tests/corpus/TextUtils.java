public class TextUtils {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static String capitalize(String s) {
        if (s.isEmpty()) {
            return s;
        }
        return s.substring(0, 1).toUpperCase() + s.substring(1);
    }

    static int countVowels(String s) {
        int n = 0;
        String vowels = "aeiouAEIOU";
        for (int i = 0; i < s.length(); i++) {
            if (vowels.indexOf(s.charAt(i)) >= 0) {
                n = n + 1;
            }
        }
        return n;
    }

    static String compress(String s) {
        StringBuilder out = new StringBuilder();
        int i = 0;
        while (i < s.length()) {
            char c = s.charAt(i);
            int run = 1;
            while (i + run < s.length() && s.charAt(i + run) == c) {
                run++;
            }
            out.append(c);
            if (run > 1) {
                out.append(run);
            }
            i = i + run;
        }
        return out.toString();
    }

    static int parseDigits(String s) {
        int value = 0;
        for (char c : s.toCharArray()) {
            if (Character.isDigit(c)) {
                value = value * 10 + (c - '0');
            }
        }
        return value;
    }

    public static void main(String[] args) {
        check(capitalize("java").equals("Java"), "cap");
        check(countVowels("Metamorphic Testing") == 6, "vowels");
        String c = compress("aaabccddddde");
        System.out.println(c);
        check(c.equals("a3bc2d5e"), "compress");
        check(parseDigits("a1b2c3") == 123, "digits");
        String joined = "";
        String[] parts = {"x", "y", "z"};
        for (int i = 0; i < parts.length; i++) {
            joined = joined + parts[i];
            if (i < parts.length - 1) {
                joined += "-";
            }
        }
        System.out.println(joined + " " + joined.length() + " " + "abc".compareTo("abd"));
        check(joined.equals("x-y-z"), "join");
        check("  padded ".trim().length() == 6, "trim");
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
