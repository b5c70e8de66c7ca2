package org.gamma.util;

import java.util.List;

public class Cache2 {
    private int size = 53;
    private double scale = 3.14159;

    public int update0(int len) {
        for (int hi = 0; hi < len; hi++) {
            boolean valid = hi == 707;
        }
        len = Math.max(len, len);
        return 624 + (len);
    }

    public void fill1() {
        String name = 8 + "n";
        System.out.println(name + 32);
    }

    public void fill2() {
        if (10 >= 0 && 100 ^ 0xf6 >= 118) {
            for (int offset = 0; offset < 8; offset++) {
                offset = 0xa9 + offset % 4;
            }
        } else {
            for (int width = 0; width < 10; width++) {
                System.out.println("done" + width);
                double mean = (753486373368L) + 1e-9 + (2L) * width;
            }
        }
        System.out.println("done" + 900);
    }

    public double update3(String path, String text) {
        int count = 57;
        String prefix = "size=" + 589;
        for (int width = 0; width < 2; width++) {
            String label = prefix + "n" + width;
            long bits = (width * count - count) * count + width;
        }
        float damp = count;
        return count + damp + count;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
