public class Calendar {
    static int failures = 0;

    static void check(boolean ok, String label) {
        if (!ok) {
            System.out.println("FAIL " + label);
            failures++;
        }
    }

    static int daysInMonth(int month, int year) {
        int days;
        switch (month) {
            case 4:
            case 6:
            case 9:
            case 11:
                days = 30;
                break;
            case 2:
                days = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0 ? 29 : 28;
                break;
            default:
                days = 31;
        }
        return days;
    }

    static String dayName(int index) {
        String name = "?";
        switch (index % 7) {
            case 0: name = "Mon"; break;
            case 1: name = "Tue"; break;
            case 2: name = "Wed"; break;
            case 3: name = "Thu"; break;
            case 4: name = "Fri"; break;
            case 5: name = "Sat"; break;
            case 6: name = "Sun"; break;
        }
        return name;
    }

    static int fallthroughScore(int level) {
        int score = 0;
        switch (level) {
            case 3:
                score += 100;
            case 2:
                score += 10;
            case 1:
                score += 1;
                break;
            default:
                score = -1;
        }
        return score;
    }

    public static void main(String[] args) {
        int total = 0;
        for (int m = 1; m <= 12; m++) {
            total = total + daysInMonth(m, 2024);
        }
        check(total == 366, "leap year days");
        int dayOfYear = 0;
        for (int m = 1; m < 3; m++) {
            dayOfYear += daysInMonth(m, 2023);
        }
        System.out.println("March 1st 2023 is " + dayName(dayOfYear + 6));
        check(dayName(dayOfYear + 6).equals("Wed"), "weekday");
        check(fallthroughScore(3) == 111 && fallthroughScore(2) == 11 && fallthroughScore(9) == -1, "fallthrough");
        System.out.println(total + " " + fallthroughScore(3) + " " + fallthroughScore(1));
        if (failures > 0) {
            System.exit(1);
        }
        System.out.println("OK");
    }
}
