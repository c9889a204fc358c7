/*
 * Copyright 2026 The tracerank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <string>
#include <string_view>

#include "tracerank/embedding.h"

namespace tracerank {
namespace {

// Works on word_[0..end_]; `stem_end_` marks the end of the stem left after a
// successful Ends() match.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word)
      : word_(word), end_(static_cast<int>(word.size()) - 1) {}

  std::string Run() {
    if (end_ <= 1) return word_;
    Step1ab();
    if (end_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return word_.substr(0, end_ + 1);
  }

 private:
  bool IsConsonant(int i) const {
    switch (word_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of vowel-consonant sequences in word_[0..stem_end_].
  int Measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > stem_end_) return n;
      if (!IsConsonant(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > stem_end_) return n;
        if (IsConsonant(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > stem_end_) return n;
        if (!IsConsonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= stem_end_; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool DoubleConsonant(int j) const {
    if (j < 1) return false;
    if (word_[j] != word_[j - 1]) return false;
    return IsConsonant(j);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y.
  bool Cvc(int i) const {
    if (i < 2 || !IsConsonant(i) || IsConsonant(i - 1) || !IsConsonant(i - 2)) {
      return false;
    }
    const char ch = word_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool Ends(std::string_view suffix) {
    const int length = static_cast<int>(suffix.size());
    if (length > end_ + 1) return false;
    if (std::string_view(word_).substr(end_ - length + 1, length) != suffix) {
      return false;
    }
    stem_end_ = end_ - length;
    return true;
  }

  void SetTo(std::string_view replacement) {
    word_.replace(stem_end_ + 1, end_ - stem_end_, replacement);
    end_ = stem_end_ + static_cast<int>(replacement.size());
    word_.resize(end_ + 1);
  }

  void ReplaceIfMeasured(std::string_view replacement) {
    if (Measure() > 0) SetTo(replacement);
  }

  void Step1ab() {
    if (word_[end_] == 's') {
      if (Ends("sses")) {
        end_ -= 2;
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (word_[end_ - 1] != 's') {
        --end_;
      }
    }
    word_.resize(end_ + 1);
    if (Ends("eed")) {
      if (Measure() > 0) --end_;
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      end_ = stem_end_;
      word_.resize(end_ + 1);
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleConsonant(end_)) {
        --end_;
        const char ch = word_[end_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++end_;
      } else {
        stem_end_ = end_;
        if (Measure() == 1 && Cvc(end_)) SetTo("e");
      }
    }
    word_.resize(end_ + 1);
  }

  void Step1c() {
    if (Ends("y") && VowelInStem()) word_[end_] = 'i';
  }

  void Step2() {
    switch (word_[end_ - 1]) {
      case 'a':
        if (Ends("ational")) { ReplaceIfMeasured("ate"); break; }
        if (Ends("tional")) { ReplaceIfMeasured("tion"); break; }
        break;
      case 'c':
        if (Ends("enci")) { ReplaceIfMeasured("ence"); break; }
        if (Ends("anci")) { ReplaceIfMeasured("ance"); break; }
        break;
      case 'e':
        if (Ends("izer")) { ReplaceIfMeasured("ize"); break; }
        break;
      case 'l':
        if (Ends("bli")) { ReplaceIfMeasured("ble"); break; }
        if (Ends("alli")) { ReplaceIfMeasured("al"); break; }
        if (Ends("entli")) { ReplaceIfMeasured("ent"); break; }
        if (Ends("eli")) { ReplaceIfMeasured("e"); break; }
        if (Ends("ousli")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 'o':
        if (Ends("ization")) { ReplaceIfMeasured("ize"); break; }
        if (Ends("ation")) { ReplaceIfMeasured("ate"); break; }
        if (Ends("ator")) { ReplaceIfMeasured("ate"); break; }
        break;
      case 's':
        if (Ends("alism")) { ReplaceIfMeasured("al"); break; }
        if (Ends("iveness")) { ReplaceIfMeasured("ive"); break; }
        if (Ends("fulness")) { ReplaceIfMeasured("ful"); break; }
        if (Ends("ousness")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 't':
        if (Ends("aliti")) { ReplaceIfMeasured("al"); break; }
        if (Ends("iviti")) { ReplaceIfMeasured("ive"); break; }
        if (Ends("biliti")) { ReplaceIfMeasured("ble"); break; }
        break;
      case 'g':
        if (Ends("logi")) { ReplaceIfMeasured("log"); break; }
        break;
      default:
        break;
    }
  }

  void Step3() {
    switch (word_[end_]) {
      case 'e':
        if (Ends("icate")) { ReplaceIfMeasured("ic"); break; }
        if (Ends("ative")) { ReplaceIfMeasured(""); break; }
        if (Ends("alize")) { ReplaceIfMeasured("al"); break; }
        break;
      case 'i':
        if (Ends("iciti")) { ReplaceIfMeasured("ic"); break; }
        break;
      case 'l':
        if (Ends("ical")) { ReplaceIfMeasured("ic"); break; }
        if (Ends("ful")) { ReplaceIfMeasured(""); break; }
        break;
      case 's':
        if (Ends("ness")) { ReplaceIfMeasured(""); break; }
        break;
      default:
        break;
    }
  }

  void Step4() {
    switch (word_[end_ - 1]) {
      case 'a':
        if (Ends("al")) break;
        return;
      case 'c':
        if (Ends("ance")) break;
        if (Ends("ence")) break;
        return;
      case 'e':
        if (Ends("er")) break;
        return;
      case 'i':
        if (Ends("ic")) break;
        return;
      case 'l':
        if (Ends("able")) break;
        if (Ends("ible")) break;
        return;
      case 'n':
        if (Ends("ant")) break;
        if (Ends("ement")) break;
        if (Ends("ment")) break;
        if (Ends("ent")) break;
        return;
      case 'o':
        if (Ends("ion") && stem_end_ >= 0 &&
            (word_[stem_end_] == 's' || word_[stem_end_] == 't')) {
          break;
        }
        if (Ends("ou")) break;
        return;
      case 's':
        if (Ends("ism")) break;
        return;
      case 't':
        if (Ends("ate")) break;
        if (Ends("iti")) break;
        return;
      case 'u':
        if (Ends("ous")) break;
        return;
      case 'v':
        if (Ends("ive")) break;
        return;
      case 'z':
        if (Ends("ize")) break;
        return;
      default:
        return;
    }
    if (Measure() > 1) {
      end_ = stem_end_;
      word_.resize(end_ + 1);
    }
  }

  void Step5() {
    stem_end_ = end_;
    if (word_[end_] == 'e') {
      const int m = Measure();
      if (m > 1 || (m == 1 && !Cvc(end_ - 1))) --end_;
    }
    // The measure below still spans the pre-trim word.
    if (word_[end_] == 'l' && DoubleConsonant(end_) && Measure() > 1) --end_;
    word_.resize(end_ + 1);
  }

  std::string word_;
  int end_;
  int stem_end_ = 0;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  const bool all_lower = std::all_of(word.begin(), word.end(),
                                     [](char c) { return c >= 'a' && c <= 'z'; });
  if (!all_lower || word.size() <= 2) return std::string(word);
  return PorterStemmer(word).Run();
}

}  // namespace tracerank
