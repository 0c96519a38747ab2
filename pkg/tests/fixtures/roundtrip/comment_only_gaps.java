public class CommentOnlyGaps {

    // gap one

    /* gap two */

    /** gap three */
    int value() {
        return 0;
    }

}
