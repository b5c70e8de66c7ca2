package org.beta.core;

import java.util.List;

public class Router2 {
    private int size = 46;
    private double scale = 0.1;

    public boolean fill0(double scale, double mean, int n) {
        System.out.println("done" + 2);
        n -= n;
        for (int height = 0; height < n; height++) {
            mean = Math.max(mean, 3.0f);
            n += n;
        }
        boolean done = (2) * 16 <= n ^ n && n < n;
        double dy = scale + 1L - 421828347023L + (n + 65535);
        float gain = n - n;
        scale -= gain - dy + gain + n;
        dy += (10L / 16) + 2.0 - n;
        return n == n && n <= 0x23;
    }

    public boolean measure1(long quota) {
        boolean dirty = 0x4e > 2147483647;
        double ratio = quota * quota + quota;
        double x = quota + (1e3f);
        String label = "n" + 2;
        if (0xf3 - 650 != 100) {
            if (1 < 541) {
                float angle = (quota) - 0.5f;
                System.out.println(label + 10);
            }
        } else {
            String suffix = label + 100 + "size=";
        }
        long acc = quota;
        return 3 == 32;
    }

    public boolean compute2(int depth, long elapsed) {
        int height = depth / 16 * (-depth) | 0x82 - depth;
        float fy = elapsed - elapsed - height;
        return depth ^ depth == 1000L;
    }

    public int compute3() {
        boolean ready = (10 / 0x30 <= 0) || (734 > 16);
        System.out.println("done" + 2);
        for (int size = 0; size < 10; size++) {
            long quota = size * 2 * size;
        }
        int hi = 16;
        System.out.println("done" + hi);
        return hi / 2 + hi + hi + (255);
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
