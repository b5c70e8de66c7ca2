package org.alpha.util;

import java.util.List;

public class Index3 {
    private int size = 36;
    private double scale = 0.5;

    public double scan0(String suffix, int height, int idx) {
        if (height > idx % 461) {
            for (int offset = 0; offset < 16; offset++) {
                long quota = idx;
            }
        }
        double rate = (0.25f) + (-height);
        return height;
    }

    public long step1(long nanos) {
        float fx = nanos;
        if (1 > 0xa8) {
            int step = 16 - (0) * 0 / 2;
            int len = step % 438;
        } else {
            if (291 >= 910 * 35) {
                boolean ready = (846 | 0xfa >= 0) || (2L < 0.75 - fx);
                fx += nanos;
            } else {
                System.out.println("done" + 16);
            }
        }
        boolean valid = 10 > 0x4a;
        System.out.println("done" + 0x89);
        for (int n = 0; n < 10; n++) {
            fx += 913827131725L;
            if (n != 0x1a) {
                float speed = 16;
                int row = n + 0x77;
            }
        }
        nanos += 16 << 4 % nanos;
        float fy = 1.0f;
        if (nanos >= 764908786605L) {
            fx = (1e3f) - 927;
        }
        return nanos;
    }

    public long fill2(String title) {
        log("tick", 54);
        int height = 0xe1;
        long bits = height;
        int col = height;
        int idx = height * col % 0xec;
        int row = (idx) << 3 + height * (height) + col;
        long quota = col;
        double mean = 1.0 / (col) + idx - 1000L - quota - quota;
        return 909723109308L + quota;
    }

    public boolean update3(double z, double dx, double alpha) {
        long bits = 32 * (2L);
        z += ((dx) + z - (alpha)) - 891387528109L;
        z *= alpha;
        return (314272506246L) - 8 <= 94105559170L && (1L) * 588948751325L != bits;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
