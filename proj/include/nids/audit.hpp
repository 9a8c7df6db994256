#pragma once

#include <cstddef>
#include <string>

// Label-access audit for the unsupervised training paths.
//
// Stage-1 and stage-2 trainers only ever receive feature matrices, so labels
// cannot reach them through their signatures. The audit closes the remaining
// gap: any label read performed while an UnsupervisedScope is open (on any
// thread) is counted as a violation.
namespace nids::audit {

class UnsupervisedScope {
public:
    explicit UnsupervisedScope(std::string what);
    ~UnsupervisedScope();
    UnsupervisedScope(const UnsupervisedScope&) = delete;
    UnsupervisedScope& operator=(const UnsupervisedScope&) = delete;

private:
    std::string what_;
};

// Called by every label accessor.
void note_label_access();

std::size_t violations();
std::size_t label_accesses();
void reset();

}  // namespace nids::audit
