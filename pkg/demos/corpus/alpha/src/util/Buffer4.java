package org.alpha.util;

import java.util.List;

public class Buffer4 {
    private int size = 33;
    private double scale = 1000.0;

    public int fill0(double y) {
        if ((8 <= 606) || (y != y)) {
            for (int size = 0; size < 57; size++) {
                System.out.println("done" + size);
                double dx = 2.5f;
            }
        }
        y = (1.0) + y;
        if (y == 0.75) {
            y = Math.max(y, 8 + y);
        }
        return 1024 - 16;
    }

    public boolean step1() {
        double ratio = 0.5 + (8) + (302) / 2.0f + 606947356934L;
        return (10 >= 0xa2) || (1L + 176832109415L + 229387756674L != 721118142888L);
    }

    public double fill2(String label, int offset) {
        offset *= 632;
        offset = offset + 796;
        offset += offset;
        for (int width = 0; width < 591; width++) {
            if (width > width) {
                System.out.println(label + width);
                offset += 191 - offset;
            }
            double sum = 1000.0 - 0.1 * (width * offset) + width;
        }
        double dy = offset * -offset;
        dy = Math.max(dy, dy);
        int idx = 100 * (-offset);
        idx = Math.max(idx, offset);
        return dy + dy + 21313955353L - offset;
    }

    public void apply3(int idx, int size, int pos) {
        System.out.println("done" + 8);
        log("tick", size);
        int height = size | (pos);
        double sum = 0 * (1e3f * pos) - -size + pos + pos;
        for (int index = 0; index < 37; index++) {
            long acc = size;
        }
        System.out.println("done" + height);
        String suffix = "n" + idx;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
